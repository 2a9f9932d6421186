"""
pneufab - compile inflatable fabric actuator designs into weld/cut G-code.

Pipeline: design file -> ActuatorDesign -> PatternSheet -> ValidationReport
-> Toolpath -> G-code, with a G-code re-simulator as the verification oracle.
"""

__version__ = "1.0.0"
