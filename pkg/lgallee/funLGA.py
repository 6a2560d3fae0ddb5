"""----------------------------------------------------------------------
PyLGA: Leslie-Gower predator-prey model with an additive Allee effect

Last updated _18 October 2026_ by _PyLGA developers_
----------------------------------------------------------------------"""

import numpy as np


def funLGA(t,
           X,
           alpha,
           beta,
           gamma,
           delta,
           eta,
           ):
    """Right-hand side of the nondimensional model in the form solve_ivp expects; parameters are passed as args"""

    # Dynamic Variable X
    x = X[0]  # Prey density
    y = X[1]  # Predator density

    dx = x * (1 - x) - gamma * x * y - beta * x / (x + alpha)  # Logistic growth, predation and additive Allee term
    dy = delta * y * (1 - y / (x + eta))  # Leslie-Gower predator with alternative food eta

    return np.array([dx, dy])


def jacLGA(t,
           X,
           alpha,
           beta,
           gamma,
           delta,
           eta,
           ):
    """Analytic Jacobian matching funLGA"""

    x = X[0]
    y = X[1]
    a = x + alpha
    e = x + eta

    return np.array([
        [1 - 2 * x - gamma * y - alpha * beta / (a * a), -gamma * x],
        [delta * y * y / (e * e), delta * (1 - 2 * y / e)],
    ])
