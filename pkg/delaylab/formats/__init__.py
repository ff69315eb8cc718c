from delaylab.formats.dc_language import parse_dc
from delaylab.formats.netlist import parse_netlist, read_netlist
from delaylab.formats.vcd import export_vcd
from delaylab.formats.wavefile import WaveFile, parse_wavefile, print_wavefile, read_wavefile, write_wavefile

__all__ = [
    "WaveFile",
    "export_vcd",
    "parse_dc",
    "parse_netlist",
    "parse_wavefile",
    "print_wavefile",
    "read_netlist",
    "read_wavefile",
    "write_wavefile",
]
