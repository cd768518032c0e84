from cli import dispatch

raise SystemExit(dispatch(["verify", "--suite", "desk"]))
