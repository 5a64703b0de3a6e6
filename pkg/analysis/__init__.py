#!/usr/bin/env python3
"""
Static classification: signed dependencies, signings, call-, order-consistency
and stratification.
"""
