from .model import *  # noqa: F401,F403
from .synth import SynthesisError, diagram_from_hookup, synthesize  # noqa: F401
