import sys
from pathlib import Path

# Make `src` importable when pytest runs from any directory
ROOT = Path(__file__).parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))
