"""Splitting symplectic and orthogonal Schubert polynomials into theta-polynomial pieces."""
