#!/usr/bin/env python3
"""
Executable checks of the metatheory of answer sets, a seeded program
generator and a shrinking fuzzer.
"""
