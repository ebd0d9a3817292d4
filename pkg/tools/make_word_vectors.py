#!/usr/bin/env python3
"""Regenerate src/taletorium/data/word_vectors.txt.

Each word's vector is the sum of one-hot semantic feature directions
plus a small word-specific pseudo-random component (so no two words
are identical). Purely deterministic; edit FEATURES and rerun.
"""

from __future__ import annotations

import hashlib
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "taletorium" / "data" / "word_vectors.txt"

NOISE = 0.12

# word -> semantic features
FEATURES: dict[str, list[str]] = {}


def w(features: str, words: str) -> None:
    feats = features.split()
    for word in words.split():
        FEATURES.setdefault(word, []).extend(f for f in feats if f not in FEATURES.get(word, []))


# --- creatures ---
w("animal mammal equine", "horse pony")
w("animal mammal equine magic", "unicorn")
w("animal mammal canine dog_kind", "dog hound puppy")
w("animal mammal canine wild", "wolf")
w("animal mammal feline", "cat kitten")
w("animal mammal feline wild big_kind", "lion tiger")
w("animal mammal rodent small_kind", "mouse squirrel")
w("animal mammal hopper", "rabbit")
w("animal mammal hopper wild", "kangaroo")
w("animal mammal farm_kind", "cow sheep goat pig")
w("animal mammal wild bear_kind", "bear panda")
w("animal mammal wild", "deer monkey elephant")
w("animal mammal wild fox_kind", "fox")
w("animal bird_kind fly_kind", "bird eagle")
w("animal bird_kind fly_kind night_kind", "owl")
w("animal bird_kind farm_kind chicken_kind", "chicken cock hen")
w("animal bird_kind farm_kind water_kind", "duck")
w("animal bird_kind water_kind cold_kind", "penguin")
w("animal insect_kind fly_kind small_kind", "butterfly bee")
w("animal water_kind swim_kind", "fish")
w("animal reptile_kind water_kind small_kind", "frog")
w("animal reptile_kind", "snake turtle")
w("animal reptile_kind magic big_kind fly_kind hot_kind", "dragon")

# --- people ---
w("human", "person")
w("human male", "man")
w("human female", "woman")
w("human male child_kind", "boy")
w("human female child_kind", "girl")
w("human child_kind", "child kid baby")
w("human female old_kind", "grandmother")
w("human male old_kind", "grandfather")
w("human male royal", "king prince")
w("human female royal", "queen princess")
w("human male occupation weapon", "knight soldier hunter")
w("human male occupation farm_kind", "farmer")
w("human male occupation water_kind", "fisherman")
w("human male occupation tree_kind", "forester")
w("human female magic", "witch fairy")
w("human male magic", "wizard")
w("human big_kind magic", "giant")
w("human small_kind magic", "dwarf elf")

# --- plants & things ---
w("plant_kind tree_kind", "tree pine oak branch")
w("plant_kind flower_kind", "flower rose")
w("plant_kind", "plant vine leaf")
w("plant_kind bush_kind", "bush")
w("plant_kind grass_kind", "grass")
w("rock_kind", "rock")
w("rock_kind small_kind round_kind", "stone pebble")
w("rock_kind small_kind round_kind water_kind", "pearl")
w("structure dwelling", "house home")
w("structure dwelling small_kind", "hut")
w("structure dwelling royal big_kind", "castle")
w("structure big_kind", "tower bridge wall")
w("structure", "fence gate door window roof stair")
w("furniture", "table chair shelf")
w("furniture rest_kind", "bed pillow")
w("container", "basket pot")
w("container water_kind", "well")
w("tool water_kind", "net")
w("tool weapon", "sword shield")
w("toy round_kind small_kind", "ball")
w("toy play_kind", "kite swing swing-set")
w("vehicle water_kind", "boat")
w("vehicle", "cart wagon")
w("food fruit_kind small_kind round_kind", "apple grape berry")
w("food", "bread porridge egg")
w("food sweet_kind", "cake honey")
w("clothing", "hat cloak shoe crown")
w("light_kind", "lamp mirror")
w("book_kind", "book story tale")

# --- scenery ---
w("sky_kind big_kind", "sky")
w("sky_kind light_kind hot_kind round_kind", "sun")
w("sky_kind light_kind round_kind night_kind", "moon star")
w("sky_kind water_kind", "cloud rain")
w("sky_kind", "wind")
w("terrain big_kind rock_kind", "mountain cave")
w("terrain grass_kind", "hill meadow")
w("terrain grass_kind farm_kind", "field")
w("terrain farm_kind", "farm yard")
w("terrain tree_kind big_kind", "forest wood")
w("terrain flower_kind", "garden")
w("water_kind flow_kind", "river stream")
w("water_kind big_kind", "lake sea")
w("water_kind swim_kind", "pool")
w("water_kind", "water")
w("cold_kind white_kind", "snow ice")
w("hot_kind light_kind", "fire")
w("terrain", "path road beach ground")

# --- verbs ---
w("motion", "ran run go went walked wandered came come moved hopped dashed trotted crept fled leaped jumped climbed turned rode riding ridden sailed swam flew fly escape hide hid")
w("rest_kind", "sat stood slept lived stayed waited perched hung")
w("perception", "saw see watched watching spied peered looked")
w("speech", "called said told asked begged shouted crowed howled hooted sang spoke")
w("emotion", "laughed smiled cried")
w("giving", "gave give offered showed shared brought bring")
w("possession", "kept keep held hold carried carry caught catch found find took take")
w("conflict weapon", "fought")
w("conflict", "chased chase chasing trapped guarded growled roared")
w("play_kind", "played play playing danced dance clapped")
w("making", "built made cooked planted raised cast drew draw grew grow")
w("change_kind", "freed dropped melted warmed breathed waved chewed tasted dreamed tried rose fell")

# --- spatial terms (relation vocabulary + prepositions) ---
w("spatial sp_on", "on onto upon")
w("spatial sp_in", "in into inside within")
w("spatial sp_under", "under below beneath down")
w("spatial sp_above", "above over up")
w("spatial sp_near", "near by beside next at with")
w("spatial sp_behind", "behind")
w("spatial sp_left", "left")
w("spatial sp_right", "right")
w("spatial sp_across motion", "across past through")
w("spatial", "from to of around between away back ahead along out off against for")
w("possession sp_near", "holding")

# --- adjectives (context words) ---
w("old_kind", "old")
w("big_kind", "big great giant huge tall high wide deep steep strong")
w("small_kind", "small little tiny short smallest")
w("color_kind", "red green blue yellow orange purple pink brown black gray grey golden silver")
w("color_kind white_kind", "white")
w("emotion good_kind", "happy kind sweet fine proud brave free")
w("emotion bad_kind", "hungry tired poor thirsty sour")
w("conflict bad_kind", "fierce ferocious sly wild")
w("light_kind", "bright shining")
w("night_kind", "dark")
w("quiet_kind", "quiet calm wise smooth silk watchful sleeping")
w("hot_kind", "hot warm")
w("cold_kind", "cold cool fresh")
w("old_kind bad_kind", "crooked")
w("food fruit_kind", "ripe")
w("child_kind", "young")
w("water_kind", "blue")


def hash_floats(word: str, n: int) -> list[float]:
    values: list[float] = []
    counter = 0
    while len(values) < n:
        digest = hashlib.blake2b(f"{word}:{counter}".encode(), digest_size=32).digest()
        for i in range(0, len(digest), 2):
            raw = int.from_bytes(digest[i : i + 2], "big") / 65535.0
            values.append((raw - 0.5) * 2.0)
            if len(values) == n:
                break
        counter += 1
    return values


def main() -> None:
    all_features = sorted({f for feats in FEATURES.values() for f in feats})
    index = {f: i for i, f in enumerate(all_features)}
    dim = len(all_features)
    lines = [str(dim)]
    for word in sorted(FEATURES):
        vec = [0.0] * dim
        for feat in FEATURES[word]:
            vec[index[feat]] += 1.0
        for i, noise in enumerate(hash_floats(word, dim)):
            vec[i] += noise * NOISE
        lines.append(word + " " + " ".join(f"{v:.4f}" for v in vec))
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {OUT} ({len(FEATURES)} words, dim {dim})")


if __name__ == "__main__":
    main()
