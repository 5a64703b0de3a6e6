#!/usr/bin/env python3
"""
Splitting sets, splitting sequences, U-components and solutions.
"""
