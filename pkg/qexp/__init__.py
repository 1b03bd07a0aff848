from qexp.cli import *
