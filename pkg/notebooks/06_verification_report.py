# %% [markdown]
# # Scenario runs and report files
#
# The same checks as the `braidquot verify` command, from Python.

# %%
import tempfile
from pathlib import Path

from braidquot import scenarios as sc

cfg = sc.load_config(overrides={"jobs": 2})
records = sc.run_suites([("table3", {}), ("wajnryb", {}), ("crystal", {}), ("crystal33", {})], cfg)
for r in records[:6]:
    print(sc.summary_line(r))
print("...", len(records), "records, exit code", sc.exit_code(records))

# %%
out = Path(tempfile.mkdtemp()) / "report.txt"
sc.report(records, out)
print(out.read_text().splitlines()[0])
header, rows = sc.read_report(out)
print(rows[0]["scenario"], rows[0]["status"])
