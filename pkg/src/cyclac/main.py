#!/usr/bin/env python3
# -*- coding: utf-8 -*-


from cyclac.dispatch import CommandHandler
import sys


def main(argv=None):
    sys.exit(CommandHandler().process(argv))


if __name__ == "__main__":
    main()
