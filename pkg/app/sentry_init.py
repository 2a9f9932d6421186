"""
Sentry SDK initialization.

Import this module first in any entry point. Tracking is active only when
SENTRY_DSN is set (environment or .env). Expected diagnostics (PneufabError,
OSError) are user input problems and are never sent.
"""

from config import SENTRY_DSN, SENTRY_ENVIRONMENT


def _drop_expected(event, hint):
    from pneufab.errors import PneufabError

    exc_info = hint.get("exc_info")
    if exc_info and isinstance(exc_info[1], (PneufabError, OSError)):
        return None
    return event


if SENTRY_DSN:
    import sentry_sdk
    sentry_sdk.init(
        dsn=SENTRY_DSN,
        environment=SENTRY_ENVIRONMENT,
        send_default_pii=False,
        traces_sample_rate=0.0,
        before_send=_drop_expected,
    )
    sentry_sdk.set_tag("service", "pneufab")


def set_module(name: str):
    """Set the module tag for Sentry events (no-op if Sentry is not active)."""
    if SENTRY_DSN:
        import sentry_sdk
        sentry_sdk.set_tag("module", name)


def report(exc: BaseException, **context) -> None:
    """Send ``exc`` with the command context and wait for delivery (no-op without a DSN)."""
    if not SENTRY_DSN:
        return
    import sentry_sdk
    with sentry_sdk.new_scope() as scope:
        for key, value in context.items():
            scope.set_extra(key, value)
        sentry_sdk.capture_exception(exc)
    sentry_sdk.flush()
