"""Identity suites, conjecture scans, cross-method checks and the command line."""
