"""SVG previews for pattern sheets and toolpaths."""

from pneufab.preview.render import RenderStyle, render_svg

__all__ = [
    'RenderStyle',
    'render_svg',
]
