from config import Config

COMMANDS = ('solve', 'validate', 'gen', 'bench', 'oracle')


class RunConfig:
    """Everything one CLI invocation needs, with defaults taken from Config"""

    def __init__(self, command, input_path='-', k=None,
                 r=1, n=None, seed=0,
                 density=Config.DEFAULT_DENSITY, mode=None,
                 json_output=False, oracle_check=False,
                 validate_rp3=False, cap=Config.VALIDATION_CAP,
                 parallel=False, workers=Config.PARALLEL_WORKERS,
                 full_lists=False, max_clique=None,
                 budget=Config.REJECTION_BUDGET,
                 schedule=Config.BENCH_SCHEDULE,
                 leaves=False, record=False,
                 db_url=Config.BENCH_DATABASE_URL,
                 dedup_cap=Config.DEDUP_CAP):
        self.command = command
        self.input_path = input_path
        self.k = k
        self.r = r
        self.n = n
        self.seed = seed
        self.density = density
        self.mode = mode
        self.json_output = json_output
        self.oracle_check = oracle_check
        self.validate_rp3 = validate_rp3
        self.cap = cap
        self.parallel = parallel
        self.workers = workers
        self.full_lists = full_lists
        self.max_clique = max_clique
        self.budget = budget
        self.schedule = tuple(schedule)
        self.leaves = leaves
        self.record = record
        self.db_url = db_url
        self.dedup_cap = dedup_cap
        self.validate()

    def validate(self):
        """Raise ValueError on an unknown command or a non-positive parameter"""
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command '{self.command}'")
        for name in ('r', 'cap', 'workers', 'budget'):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        for name in ('k', 'n', 'max_clique'):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ValueError(f"{name} must be positive")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError("density must lie in [0, 1]")
        if any(size < 1 for size in self.schedule):
            raise ValueError("schedule sizes must be positive")

    def __str__(self):
        return f"RunConfig(command='{self.command}', input_path='{self.input_path}')"

    def __repr__(self):
        return self.__str__()
