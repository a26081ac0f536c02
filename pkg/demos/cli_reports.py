# The command-line front end, driven in-process.  The same calls work as
#   ringlab classify Z8 --format md
# from a shell.

from ringlab.cli import main

main(["classify", "Z8", "--format", "md"])
main(["witness", "Z35", "zero", "3", "-2", "--format", "md"])
main(["search", "2", "40", "--witnesses", "--format", "md"])
code = main(["audit", "THM_LINSYS", "--format", "md"])
print("audit exit code:", code)  # 3 signals a counterexample
