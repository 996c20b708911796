"""Spectral convergence in the grid degree n.

Sweeps n for the exponential amplitude exp(alpha*(x-1)) whose integral
has the closed form 2*exp(-alpha)*sinh(alpha+i*omega)/(alpha+i*omega),
and prints error-vs-n curves. The error drops geometrically until it
hits the rounding floor; a larger alpha needs a larger n because the
amplitude itself is harder to resolve, but omega barely matters.
"""

import numpy as np

from oscint import IntegralProblem, integrate_standard


def closed_form(omega, alpha):
    z = alpha + 1j * omega
    return 2.0 * np.exp(-alpha) * np.sinh(z) / z


for alpha in (16.0, 64.0):
    amplitude = lambda x: np.exp(alpha * (x - 1.0))
    print(f"alpha = {alpha:g}")
    header = "   n  " + "".join(f"  w={w:<9g}" for w in (20.0, 200.0, 2000.0))
    print(header)
    for n in (20, 40, 60, 80, 100, 120):
        row = f"{n:4d}  "
        for omega in (20.0, 200.0, 2000.0):
            value = integrate_standard(IntegralProblem(amplitude, omega, n)).value
            err = abs(value - closed_form(omega, alpha))
            row += f"  {err:9.2e}"
        print(row)
    print()

print("Each column is one frequency; each row doubles down on resolution.")
print("Once n resolves exp(alpha*(x-1)), every frequency is converged.")
