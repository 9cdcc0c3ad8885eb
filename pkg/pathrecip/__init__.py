# pathrecip package
