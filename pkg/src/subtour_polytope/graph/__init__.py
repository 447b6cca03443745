"""Graph representation, parsing, minimum cuts and preprocessing reductions."""
