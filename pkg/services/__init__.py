# Services package for the list-coloring solver
