"""Regenerates pairwise26.csv: 26 subjects, 5 alternatives, 20 trials per doubleton.

Each subject has a hidden ranking and a consistency level; a few subjects
have one pair reversed so that their choices cycle. Run from this directory.
"""
import itertools
import random

ALTS = ["a", "b", "c", "d", "e"]
TRIALS = 20


def subject_rows(rng, sid):
    ranking = ALTS[:]
    rng.shuffle(ranking)
    rank = {x: i for i, x in enumerate(ranking)}
    consistency = rng.choice([0.5, 0.6, 0.7, 0.8, 0.9, 1.0])
    flipped = None
    if sid % 4 == 3:
        flipped = frozenset((ranking[0], ranking[-1]))
    rows = []
    for x, y in itertools.combinations(ALTS, 2):
        better = x if rank[x] < rank[y] else y
        if flipped == frozenset((x, y)):
            better = y if better == x else x
        p = 0.5 + 0.5 * consistency
        wins = sum(rng.random() < p for _ in range(TRIALS))
        other = y if better == x else x
        rows.append((f"{x}|{y}", better, wins))
        rows.append((f"{x}|{y}", other, TRIALS - wins))
    return rows


def main():
    rng = random.Random(20260401)
    lines = ["subject,menu,alternative,count"]
    for sid in range(26):
        name = f"s{sid + 1:02d}"
        for menu, alt, count in subject_rows(rng, sid):
            lines.append(f"{name},{menu},{alt},{count}")
    with open("pairwise26.csv", "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
