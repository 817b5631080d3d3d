import logging

from sqlalchemy import create_engine
from sqlalchemy.orm import DeclarativeBase, sessionmaker

logger = logging.getLogger(__name__)


class Base(DeclarativeBase):
    pass


def init_db(url):
    """Create the engine and all tables, return a session factory"""
    # Import all models to ensure proper registration
    import models.bench_run  # noqa: F401

    engine = create_engine(url)
    Base.metadata.create_all(engine)
    logger.info(f"Benchmark database ready at {url}")
    return sessionmaker(bind=engine, expire_on_commit=False)


def reset_database(url):
    """Drop and recreate every table - useful when a baseline must be refixed"""
    import models.bench_run  # noqa: F401

    engine = create_engine(url)
    Base.metadata.drop_all(engine)
    Base.metadata.create_all(engine)
    logger.info(f"Benchmark database reset at {url}")
    return sessionmaker(bind=engine, expire_on_commit=False)


def open_session(url):
    return init_db(url)()
