"""Core building blocks: settings, errors, distances and the cover search."""
