from platcalc.cli import main

main()
