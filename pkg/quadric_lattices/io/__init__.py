"""Input/output package: CLI, configuration, formatting and exports."""
