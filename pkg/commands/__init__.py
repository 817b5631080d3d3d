# Command modules for the list-coloring CLI
