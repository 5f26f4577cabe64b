"""Application-focused tests package.

This package contains tests that drive the hierdim command line the way
shell pipelines and scripts use it.
"""
