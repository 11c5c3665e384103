"""Write the CSV behind each of the five figures into ./figure_data/.

Run: python demos/05_figure_data.py [resolution]
"""
import os
import sys

from catdamp import figure_csv

resolution = int(sys.argv[1]) if len(sys.argv) > 1 else 61
os.makedirs("figure_data", exist_ok=True)
for fig in range(1, 6):
    path = os.path.join("figure_data", f"fig{fig}.csv")
    text = figure_csv(fig, resolution, out=path)
    print(f"{path}: {text.count(chr(10)) - 1} rows")
