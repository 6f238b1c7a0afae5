#!/usr/bin/env python
import sys
from sqfdepth.cli import main

sys.exit(main())
