from pathlib import Path
from typing import Dict, List, Optional

import pandas as pd

ISSUE_COLUMNS = ['input_name', 'input_path', 'issue_type', 'message', 'timestamp', 'runner']


def handle_problematic_inputs(problematic_inputs: List[Dict], output_dir: str | Path, script_name: str) -> Optional[Path]:
    """Save information about problematic inputs to a CSV next to the results."""
    if not problematic_inputs:
        return None
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    output_file = output_dir / f"problematic_inputs_{script_name}.csv"
    pd.DataFrame(problematic_inputs, columns=ISSUE_COLUMNS).to_csv(output_file, index=False)
    return output_file
