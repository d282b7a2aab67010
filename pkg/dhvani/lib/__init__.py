# -*- coding: utf-8 -*-
"""
dhvani internal library.
"""
