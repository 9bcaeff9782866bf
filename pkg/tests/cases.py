"""Parameter sets shared by the unit and acceptance tests."""

CATALOG_CASES = {
    "beta-exponential": [
        {"alpha": 2.0, "beta": 3.0, "lam": 1.5},
        {"alpha": 0.7, "beta": 1.3, "lam": 0.5},
        {"alpha": 1.0, "beta": 1.0, "lam": 2.0},
    ],
    "beta-weibull": [
        {"alpha": 2.0, "beta": 3.0, "c": 1.5, "lam": 1.0},
        {"alpha": 0.6, "beta": 2.0, "c": 0.8, "lam": 2.0},
        {"alpha": 3.0, "beta": 0.5, "c": 2.0, "lam": 0.7},
    ],
    "beta-gumbel": [
        {"alpha": 2.0, "beta": 3.0, "mu": 0.0, "sigma": 1.0},
        {"alpha": 0.5, "beta": 1.5, "mu": 1.0, "sigma": 2.0},
        {"alpha": 3.0, "beta": 0.8, "mu": -1.0, "sigma": 0.5},
    ],
    "beta-laplace": [
        {"alpha": 2.0, "beta": 3.0},
        {"alpha": 0.5, "beta": 1.5, "mu": 1.0, "sigma": 2.0},
        {"alpha": 3.0, "beta": 0.8, "mu": -1.0, "sigma": 0.5},
    ],
    "beta-pareto": [
        {"alpha": 2.0, "beta": 3.0, "theta": 1.0, "k": 4.0},
        {"alpha": 0.7, "beta": 1.5, "theta": 2.0, "k": 1.0},
        {"alpha": 3.0, "beta": 0.8, "theta": 0.5, "k": 2.5},
    ],
    "beta-rayleigh": [
        {"alpha": 2.0, "beta": 3.0, "sigma": 1.0},
        {"alpha": 0.7, "beta": 1.5, "sigma": 2.0},
        {"alpha": 3.0, "beta": 0.8, "sigma": 0.5},
    ],
    "kum-weibull": [
        {"a": 2.0, "b": 3.0, "c": 1.5, "lam": 1.0},
        {"a": 0.6, "b": 2.0, "c": 0.8, "lam": 2.0},
        {"a": 3.0, "b": 0.5, "c": 2.0, "lam": 0.7},
    ],
    "kum-laplace": [
        {"a": 2.0, "b": 3.0},
        {"a": 0.5, "b": 1.5, "mu": 1.0, "sigma": 2.0},
        {"a": 3.0, "b": 0.8, "mu": -1.0, "sigma": 0.5},
    ],
    "kum-gumbel": [
        {"a": 2.0, "b": 3.0},
        {"a": 0.5, "b": 1.5, "mu": 1.0, "sigma": 2.0},
        {"a": 3.0, "b": 0.8, "mu": -1.0, "sigma": 0.5},
    ],
    "kum-lindley": [
        {"a": 2.0, "b": 3.0, "theta": 1.0},
        {"a": 0.5, "b": 1.5, "theta": 2.0},
        {"a": 3.0, "b": 0.8, "theta": 0.5},
    ],
    "kum-half-cauchy": [
        {"a": 2.0, "b": 3.0, "phi": 1.0},
        {"a": 0.5, "b": 1.5, "phi": 2.0},
        {"a": 3.0, "b": 0.8, "phi": 0.5},
    ],
}

CATALOG_FLAT = [(fam, params) for fam, sets in CATALOG_CASES.items() for params in sets]

# (alpha, beta, p, mu, sigma): twelve laws covering integer, fractional, <1 and
# degenerate-weight shapes plus a location-scale pair
BML_MATRIX = [
    (2.0, 3.0, 0.5, 0.0, 1.0),
    (1.0, 2.0, 0.5, 0.0, 1.0),
    (0.8, 0.9, 0.3, 0.0, 1.0),
    (0.5, 0.5, 0.5, 0.0, 1.0),
    (3.5, 1.2, 0.7, 0.0, 1.0),
    (1.0, 1.0, 0.2, 0.0, 1.0),
    (2.0, 3.0, 1.0, 0.0, 1.0),
    (2.0, 3.0, 0.0, 0.0, 1.0),
    (0.3, 4.0, 0.9, 0.0, 1.0),
    (5.0, 0.4, 0.1, 0.0, 1.0),
    (2.0, 3.0, 0.5, 1.5, 2.0),
    (0.7, 1.6, 0.4, -2.0, 0.5),
]
