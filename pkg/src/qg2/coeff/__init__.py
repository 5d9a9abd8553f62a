from .ratfunc import RatFunc, ZERO, ONE, R, S
from .cyclo import CycloNum, cyclotomic
from .zeta import ZetaNum, ZETA
from .modes import CoeffMode, Generic, RootOfUnity, Twisted, GENERIC, make_mode, specialize, validate_root
from .quantities import rs_integer, rs_factorial, rs_binomial, rs_quantity, theta_binomial, pairing_scalar
