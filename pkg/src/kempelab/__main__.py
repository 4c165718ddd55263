from kempelab.cli import main

main()
