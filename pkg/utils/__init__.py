#!/usr/bin/env python3
"""
Shared utilities (logging setup) for the answer-set checker.
"""
