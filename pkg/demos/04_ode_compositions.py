"""Differentiate through an ODE solution.

The Duffing oscillator has no closed-form solution; RK4 produces f(t)
numerically, and the dual wrapper attaches f' and f'' read straight from
the integrated state and the equation itself.  Compositions in either
direction then follow from ordinary dual arithmetic.
"""

import math

from dualnum import OdeProblem, duffing_problem, rk4, rk4dual, sin, variable
from dualnum.reference import central_diff

problem = duffing_problem(num_steps=100)
td = variable(1.0)

f = rk4dual(problem, td)
print("f(1), f'(1), f''(1)    ", f)

# f(sin t): dualize the inner function, hand the dual time to the solver
print("f(sin t) and derivs    ", rk4dual(problem, sin(td)))

# sin(f(t)): the solver output is a Dual3 like any other
print("sin(f(t)) and derivs   ", sin(rk4dual(problem, td)))

# cross-check the first derivative with central differences
fd1 = central_diff(lambda t: rk4(problem, t)[0], 1.0, 1)
print("f'(1) via differences  ", fd1)

# classic fourth-order behaviour: error shrinks ~16x per step doubling
osc = lambda n: OdeProblem(0.0, 0.0, 1.0,
                           lambda t, x1, x2: x2,
                           lambda t, x1, x2: -x1, n)
print("harmonic-oscillator error vs step count:")
for steps in (25, 50, 100, 200):
    err = abs(rk4(osc(steps), 1.0)[0] - math.sin(1.0))
    print(f"  np = {steps:4d}   error = {err:.3e}")
