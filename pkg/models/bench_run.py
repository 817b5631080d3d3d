from datetime import datetime
from enum import Enum as PyEnum
from typing import Optional

from sqlalchemy import DateTime, Enum, Float, Integer, String, UniqueConstraint
from sqlalchemy.orm import Mapped, mapped_column

from database import Base


class BenchKind(PyEnum):
    MATCHER = "matcher"
    LEAVES = "leaves"


class BenchRun(Base):
    """One measured row of a benchmark schedule"""
    __tablename__ = 'bench_runs'

    id: Mapped[int] = mapped_column(primary_key=True)
    kind: Mapped[BenchKind] = mapped_column(Enum(BenchKind), nullable=False, index=True)
    n: Mapped[int] = mapped_column(Integer, nullable=False)
    k: Mapped[int] = mapped_column(Integer, nullable=False)
    r: Mapped[int] = mapped_column(Integer, default=1)
    seed: Mapped[int] = mapped_column(Integer, nullable=False)
    instance_hash: Mapped[str] = mapped_column(String(32), nullable=False)
    gamma_nodes: Mapped[Optional[int]] = mapped_column(Integer, nullable=True)
    phases: Mapped[Optional[int]] = mapped_column(Integer, nullable=True)
    leaves: Mapped[Optional[int]] = mapped_column(Integer, nullable=True)
    branches: Mapped[Optional[int]] = mapped_column(Integer, nullable=True)
    wall_ms: Mapped[float] = mapped_column(Float, nullable=False)
    created_at: Mapped[datetime] = mapped_column(DateTime, default=datetime.utcnow)

    def __str__(self):
        return f"BenchRun(kind={self.kind.value}, n={self.n}, wall_ms={self.wall_ms:.1f})"

    def __repr__(self):
        return self.__str__()


class LeafCeiling(Base):
    """Leaf count fixed by the first baseline run; later runs must not exceed it"""
    __tablename__ = 'leaf_ceilings'
    __table_args__ = (UniqueConstraint('n', 'k', 'r', 'seed', name='uq_leaf_ceiling'),)

    id: Mapped[int] = mapped_column(primary_key=True)
    n: Mapped[int] = mapped_column(Integer, nullable=False)
    k: Mapped[int] = mapped_column(Integer, nullable=False)
    r: Mapped[int] = mapped_column(Integer, nullable=False)
    seed: Mapped[int] = mapped_column(Integer, nullable=False)
    leaves: Mapped[int] = mapped_column(Integer, nullable=False)
    created_at: Mapped[datetime] = mapped_column(DateTime, default=datetime.utcnow)

    @classmethod
    def get_or_create(cls, session, n, k, r, seed, leaves):
        """Get the stored ceiling or fix it at ``leaves``. Returns (ceiling, created)"""
        existing = session.query(cls).filter_by(n=n, k=k, r=r, seed=seed).first()
        if existing:
            return existing, False
        ceiling = cls(n=n, k=k, r=r, seed=seed, leaves=leaves)
        session.add(ceiling)
        session.commit()
        return ceiling, True

    def __str__(self):
        return f"LeafCeiling(n={self.n}, k={self.k}, r={self.r}, seed={self.seed}, leaves={self.leaves})"

    def __repr__(self):
        return self.__str__()
