collect_ignore = ["examples", "notebooks"]
