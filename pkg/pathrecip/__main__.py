from pathrecip.cli import main

main()
