#!/usr/bin/env python3
"""Background trial execution for the fuzzer."""
