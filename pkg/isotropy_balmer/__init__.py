"""
幾何迷向與 Balmer 譜模組初始化
"""
from isotropy_balmer.expr import (
    Basic, Sphere0, basic, cell, dual, isoclass, smash, sphere0, susp, wedge,
)
from isotropy_balmer.parser import parse_descriptor, parse_expr
from isotropy_balmer.primes import (
    in_thickt, loct_equal, loct_generator, point_closure, prime, prime_leq, primes,
)
from isotropy_balmer.realize import is_realizable, realize, separate
from isotropy_balmer.support import ctmax, is_cotorally_closed, lambda_ct, support
from isotropy_balmer.zariski import is_zariski_closed, zariski_closure
