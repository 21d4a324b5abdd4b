"""Regenerate the shipped fixture files from the catalog definitions."""
import os
from nonassoc.catalog import catalog_entries
from nonassoc.fileformat import serialize_structure

FIXDIR = os.path.join(os.path.dirname(__file__), "..", "src", "nonassoc", "fixtures")
NAME_MAP = {"D*": "Dstar", "L*": "Lstar", "W*": "Wstar", "NLA*": "NLAstar"}

os.makedirs(FIXDIR, exist_ok=True)
for e in catalog_entries():
    fname = NAME_MAP.get(e.name, e.name) + ".json"
    path = os.path.join(FIXDIR, fname)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_structure(e.structure))
    print("wrote", fname)
