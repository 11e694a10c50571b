from .command import Command, Subcommand

__all__ = ["Command", "Subcommand"]
