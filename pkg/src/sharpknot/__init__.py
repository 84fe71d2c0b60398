"""Sharp-move calculus on knot diagrams."""
