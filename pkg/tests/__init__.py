"""
Tests - 测试包
"""
