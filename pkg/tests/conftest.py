import os
import sys

# no setup.py; the package is imported straight from the source tree
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), os.pardir, 'src', 'python'))

def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: rebuilds the full zero tables or runs the whole verify suite')
