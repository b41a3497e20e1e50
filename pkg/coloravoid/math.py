"""
Auxiliary math functions for coloravoid.

Closed-form lower and upper bounds on the size of color-avoiding connected
spanning structures, and the approximation ratios of the sparsifiers.

"""

import fractions

VARIANTS = ('eca', 'vca', 'ivca', 'matroid')

def _ceil_div(a, b):
    """
    Return the ceiling of ``a/b`` for integers, without floating point.

    Parameters
    ----------
    a : int
        Numerator.
    b : int
        Denominator, must be positive.

    Returns
    -------
    int
        ``ceil(a/b)``.

    Examples
    --------

    >>> _ceil_div(7, 3)
    3

    >>> _ceil_div(6, 3)
    2

    >>> _ceil_div(-1, 2)
    0

    """
    return -(-a // b)

def _check_variant(variant):
    variant = variant.lower()
    if variant not in VARIANTS:
        raise ValueError("variant {} not recognized, should be one of {}".\
            format(variant, ", ".join(VARIANTS)))
    return variant

def min_elements_bound(k, r):
    """
    Minimum size of a courteously colored matroid of rank `r`.

    A matroid of rank ``r >= 1`` courteously colored with exactly `k`
    colors has at least ``ceil(k*r/(k-1))`` elements, and this is tight.

    Parameters
    ----------
    k : int
        Number of colors.
    r : int
        Rank of the matroid.

    Returns
    -------
    int
        The lower bound.

    Examples
    --------

    >>> min_elements_bound(4, 7)
    10

    >>> min_elements_bound(2, 5)
    10

    >>> min_elements_bound(3, 0)
    0

    """
    if r < 0:
        raise ValueError("rank should be non-negative, got {}".format(r))
    if k < 1:
        raise ValueError("number of colors should be positive, got {}".\
            format(k))
    if r == 0:
        return 0
    if k == 1:
        raise ValueError("a matroid of rank {} cannot be courteously colored"
                         " with one color".format(r))
    return _ceil_div(k*r, k - 1)

def min_edges_bound(variant, k, n):
    """
    Minimum number of edges of a color-avoiding connected graph.

    Parameters
    ----------
    variant : {'eca', 'vca', 'ivca', 'matroid'}
        Connectivity notion. For 'matroid', `n` is interpreted as the
        rank of the matroid.
    k : int
        Number of colors the graph is colored with.
    n : int
        Number of vertices (or rank, for 'matroid').

    Returns
    -------
    int
        The lower bound on the number of edges (or elements).

    Raises
    ------
    ValueError
        If no graph with the given parameters exists.

    Examples
    --------

    >>> min_edges_bound('eca', 4, 8)
    10

    >>> min_edges_bound('vca', 4, 6)
    6

    >>> min_edges_bound('ivca', 4, 15)
    17

    >>> min_edges_bound('ivca', 1, 5)
    10

    """
    variant = _check_variant(variant)
    if variant == 'matroid':
        return min_elements_bound(k, n)
    if n < 0:
        raise ValueError("number of vertices should be non-negative, got {}".\
            format(n))
    if k < 1:
        raise ValueError("number of colors should be positive, got {}".\
            format(k))

    if variant == 'eca':
        # An edge-colored graph on n vertices spans a graphic matroid of
        # rank n - 1
        if n <= 1:
            return 0
        if k == 1:
            raise ValueError("no edge-color-avoiding connected graph on {} "
                             "vertices uses a single color".format(n))
        return min_elements_bound(k, n - 1)

    # Vertex variants need at least one vertex per color
    if n < k:
        raise ValueError("{} vertices cannot carry {} colors".format(n, k))
    if variant == 'vca':
        if k <= 2:
            return max(n - 1, 0)
        return n
    else:
        if k == 1:
            return n*(n - 1)//2
        # ceil((2k-1)/(2k-2)*n - k/(k-1))
        return _ceil_div((2*k - 1)*n - 2*k, 2*k - 2)

def max_edges_bound(variant, k, n):
    """
    Maximum size of a sparsifier output or of a deletion-minimal structure.

    Returns ``2r`` for matroids of rank `n`, ``2(n-1)`` for the edge
    variant and ``2n-3`` for the vertex variants with ``k >= 2``. With a
    single color, vertex-color-avoiding outputs are spanning trees and
    internally vertex-color-avoiding ones are complete graphs.

    """
    variant = _check_variant(variant)
    if variant == 'matroid':
        return 2*n
    if n <= 1:
        return 0
    if variant == 'eca':
        return 2*(n - 1)
    if k == 1:
        return n - 1 if variant == 'vca' else n*(n - 1)//2
    return 2*n - 3

def approximation_ratio(variant, k):
    """
    Guaranteed approximation ratio of the sparsifier for `variant`.

    Parameters
    ----------
    variant : {'eca', 'vca', 'ivca', 'matroid'}
        Connectivity notion.
    k : int
        Number of colors used by the input.

    Returns
    -------
    fractions.Fraction
        ``2(k-1)/k`` for 'eca' and 'matroid', ``2`` for 'vca' and
        ``2(2k-2)/(2k-1)`` for 'ivca'. Single-colored inputs are solved
        exactly, so the ratio is 1.

    """
    variant = _check_variant(variant)
    if k <= 1:
        return fractions.Fraction(1)
    if variant in ('eca', 'matroid'):
        return fractions.Fraction(2*(k - 1), k)
    elif variant == 'vca':
        return fractions.Fraction(2)
    else:
        return fractions.Fraction(2*(2*k - 2), 2*k - 1)
