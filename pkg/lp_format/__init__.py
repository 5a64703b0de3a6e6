#!/usr/bin/env python3
"""
The `.lp` text format and JSON renderings.
"""
