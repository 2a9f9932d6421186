#!/usr/bin/env python3
"""
Pneufab Runner.

Compiles actuator designs into weld/cut toolpaths and G-code for the
dual-tool welding and cutting platform.

Usage:
    python3 -m runners.pneufab_runner materials [--materials FILE]
    python3 -m runners.pneufab_runner validate designs/kirigami_125.pf
    python3 -m runners.pneufab_runner preview designs/linear.pf --format svg --out linear.svg
    python3 -m runners.pneufab_runner plan designs/twisting_30.pf --weld-mode pulsed:50:500
    python3 -m runners.pneufab_runner gcode designs/kirigami_125.pf --machine machines/default.machine
    python3 -m runners.pneufab_runner simulate kirigami_125.gcode
    python3 -m runners.pneufab_runner estimate designs/linear.pf
"""

import sys
import argparse
from pathlib import Path
from typing import Optional, Tuple

sys.path.insert(0, str(Path(__file__).parent.parent))

from runners.base_runner import BaseRunner, EXIT_FAILED, EXIT_OK
from common import output_path, print_banner, read_text, write_text
from pneufab import __version__
from pneufab.design import ActuatorDesign, parse_design, to_typed
from pneufab.errors import CliError, PatternInfeasible
from pneufab.estimate import estimate_linear_contraction, reference_frame, reference_notes
from pneufab.estimate.constants import SUPPORTED_FAMILIES
from pneufab.gcode import emit, parse_gcode, simulate
from pneufab.materials import MaterialTable, builtin_table, load_material_file, materials_frame
from pneufab.patterns import PatternSheet, dump_sheet, generate
from pneufab.preview import render_svg
from pneufab.toolpath import MachineProfile, load_machine_profile, parse_weld_mode, plan, summarize
from pneufab.validate import Finding, ValidationReport, validate_sheet

COMMANDS = ("materials", "validate", "preview", "plan", "gcode", "simulate", "estimate")


class PneufabRunner(BaseRunner):
    """Runner for the pneufab command line."""

    RUNNER_NAME = "Pneufab Runner"

    def __init__(self, args: argparse.Namespace):
        super().__init__(args)
        self.materials: MaterialTable = builtin_table()
        self.machine = MachineProfile()

    # ------------------------------------------------------------------
    # Inputs
    # ------------------------------------------------------------------

    def _load_profiles(self) -> None:
        if self.args.materials:
            self.materials = load_material_file(read_text(self.args.materials), self.materials)
            self.logger.debug(f"Materials from {self.args.materials}: {len(self.materials)} entries")
        if self.args.machine:
            self.machine = load_machine_profile(read_text(self.args.machine))
            self.logger.debug(f"Machine profile from {self.args.machine}")

    def _source(self) -> str:
        if not self.args.path:
            raise CliError("E_USAGE", f"{self.args.command} needs an input file")
        return self.args.path

    def _design(self) -> ActuatorDesign:
        return to_typed(parse_design(read_text(self._source())), self.materials)

    def _sheet(self) -> Tuple[ActuatorDesign, Optional[PatternSheet], ValidationReport]:
        """Generate and validate; an infeasible generator becomes a failed report carrying both codes."""
        design = self._design()
        try:
            sheet = generate(design, materials=self.materials)
        except PatternInfeasible as e:
            finding = Finding("error", e.finding_code, f"{e.message} [{e.code}]", "params")
            return design, None, ValidationReport((finding,))
        return design, sheet, validate_sheet(sheet, self.machine)

    # ------------------------------------------------------------------
    # Commands
    # ------------------------------------------------------------------

    def cmd_materials(self) -> int:
        self.out(materials_frame(self.materials).to_string(index=False))
        return EXIT_OK

    def cmd_validate(self) -> int:
        design, _, report = self._sheet()
        self.out(report.text(design.name))
        return EXIT_OK if report.passed else EXIT_FAILED

    def cmd_preview(self) -> int:
        design, sheet, report = self._sheet()
        if sheet is None:
            self.out(report.text(design.name))
            return EXIT_FAILED
        if self.args.format == "txt":
            text, suffix = dump_sheet(sheet), ".txt"
        else:
            text, suffix = render_svg(sheet, machine=self.machine), ".svg"
        target = write_text(output_path(self._source(), suffix, self.args.out), text)
        self.logger.info(f"Preview written to {target}")
        self.out(f"preview {target}")
        return EXIT_OK

    def _toolpath(self):
        design, sheet, report = self._sheet()
        if not report.passed:
            self.out(report.text(design.name))
            return None
        return sheet, plan(sheet, self.machine, self.materials, parse_weld_mode(self.args.weld_mode), report)

    def cmd_plan(self) -> int:
        planned = self._toolpath()
        if planned is None:
            return EXIT_FAILED
        _, tp = planned
        self.out(f"plan {tp.name}")
        for line in tp.header:
            self.out(f"  {line}")
        self.out(f"  weld order {' '.join(map(str, tp.weld_order)) or '-'}")
        self.out(f"  cut order {' '.join('outline' if i < 0 else str(i) for i in tp.cut_order)}")
        self.out(summarize(tp, self.machine).to_string(index=False))
        return EXIT_OK

    def cmd_gcode(self) -> int:
        planned = self._toolpath()
        if planned is None:
            return EXIT_FAILED
        _, tp = planned
        program = emit(tp, self.machine)
        target = write_text(output_path(self._source(), ".gcode", self.args.out), program.text)
        self.logger.info(f"G-code written to {target} ({len(program)} lines)")
        sim = simulate(program, self.machine)
        self.out(f"gcode {target}")
        for line in sim.summary_lines():
            self.out(f"  {line}")
        return EXIT_OK if sim.within_envelope else EXIT_FAILED

    def cmd_simulate(self) -> int:
        program = parse_gcode(read_text(self._source()), self.machine)
        sim = simulate(program, self.machine)
        self.out(f"simulate {self._source()}")
        for line in sim.summary_lines():
            self.out(f"  {line}")
        return EXIT_OK if sim.within_envelope else EXIT_FAILED

    def cmd_estimate(self) -> int:
        design = self._design()
        self.out(f"estimate {design.name} ({design.family.value})")
        if design.family.value in SUPPORTED_FAMILIES:
            strain = estimate_linear_contraction(design)
            self.out(f"  ideal contraction {strain:.4f} (pouch-motor model, upper bound)")
        else:
            self.out(f"  no contraction model for {design.family.value}")
        self.out("reference results")
        self.out(reference_frame().to_string(index=False))
        for note in reference_notes():
            self.out(f"  note: {note}")
        return EXIT_OK

    def run(self) -> int:
        """Execute the selected command."""
        print_banner(f"pneufab {__version__} {self.args.command}", self.debug, sys.stderr)
        self._load_profiles()
        handler = getattr(self, f"cmd_{self.args.command}", None)
        if handler is None:
            raise CliError("E_USAGE", f"unknown command '{self.args.command}'")
        code = handler()
        self.logger.debug(f"{self.RUNNER_NAME}: {self.args.command} exited {code}")
        return code

    @classmethod
    def create_argument_parser(cls) -> argparse.ArgumentParser:
        parser = super().create_argument_parser()
        parser.prog = "pneufab"
        parser.add_argument('command', choices=COMMANDS, help='Pipeline step to run')
        parser.add_argument('path', nargs='?', help='Design file (.pf) or, for simulate, a G-code file')
        parser.add_argument('--machine', metavar='FILE', help='Machine profile (defaults built in)')
        parser.add_argument('--materials', metavar='FILE', help='Material file merged over the built-in table')
        parser.add_argument('--out', metavar='PATH', help='Output file (default: input name with new suffix)')
        parser.add_argument(
            '--weld-mode',
            default='continuous',
            metavar='MODE',
            help='continuous or pulsed:<duty%%>:<period_ms>'
        )
        parser.add_argument('--format', choices=('svg', 'txt'), default='svg', help='Preview format')
        return parser


def main() -> None:
    PneufabRunner.main()


if __name__ == '__main__':
    main()
