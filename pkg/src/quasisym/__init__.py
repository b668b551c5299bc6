"""Free and parking quasi-symmetrizing actions, the nested Hopf algebras of
r-parking quasi-symmetric functions, and the related tree enumeration."""

import math

INF = math.inf

__version__ = "0.1.0"
