#!/usr/bin/env python3

# Standalone executable for the `lommel` command line: Lommel function
# evaluation, approximant triples, their zeros and the published tables.

if __name__ == '__main__':
    from lommel.internals.commands import main_from_cli as main
    main()
else:
    raise ImportError('This script is not meant to be imported!')
