from lommel.internals.commands import main_from_cli

main_from_cli()
