from os import getenv

from dotenv import load_dotenv

# Load the environment
load_dotenv()


def get_or(name: str, default: str) -> str:
    var = getenv(name)
    if not var:
        return default
    return var
