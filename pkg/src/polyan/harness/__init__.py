"""Generators, verification suites and the command-line front end."""
