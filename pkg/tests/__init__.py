"""Test package for the good set analyzer."""
