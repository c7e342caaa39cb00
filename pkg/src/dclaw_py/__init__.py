"""dclaw: d-claw vertex deletion on undirected graphs."""

__version__ = "0.1.0"
