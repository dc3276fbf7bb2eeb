from archcat.cli import main

main()
