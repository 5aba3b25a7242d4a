#!/usr/bin/env python3
"""
Main CLI entry point
"""

from poscodeg.cli import main


if __name__ == '__main__':
    main()
