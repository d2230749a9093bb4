from .relation_verifier.cli import main

main()
