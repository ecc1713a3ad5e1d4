"""Ball convexity in polyhedral Minkowski spaces."""
