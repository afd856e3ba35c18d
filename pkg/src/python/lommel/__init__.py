__doc__ = """
Lommel functions of the first kind and the trigonometric approximants of
the half-integer ones.

Public modules:

* ``lommel.core``: parameter validation, the power series and the 1F2 form.
* ``lommel.quadrature``: the sine- and cosine-kernel integral forms.
* ``lommel.hypergeometric``: the 2F1/1F2 building blocks.
* ``lommel.ratpoly``: polynomials with exact rational coefficients.
* ``lommel.pade``: approximant triples (A, B, C) and their scalings.
* ``lommel.hyp_trig``: the finite trigonometric form of 2F1(1/2+nu, 1/2-nu; n+1/2).
* ``lommel.roots``: polynomial roots and the zero-distance tables.
* ``lommel.io``: file formats.
"""
