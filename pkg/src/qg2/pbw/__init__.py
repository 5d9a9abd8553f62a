from .algebra import Algebra, Element, OrderedEngine, NAMES
from .render import render_element, render_monomial, element_json
from .ops import get_algebra, tau, tau_monomial, restrict, restrict_tensor, straighten_pair, weight_conjugation
