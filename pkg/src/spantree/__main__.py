from spantree.cli import main

main()
