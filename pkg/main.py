#!/usr/bin/env python3
import sys

from affine_fc.cli import main

if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
