"""Command-line interface: config parsing, subcommands and exit codes."""
