"""Flips every byte of a verified word file and checks that verify rejects it."""

import pathlib
import subprocess
import sys
import tempfile

cli, src, dst = sys.argv[1:4]

with tempfile.TemporaryDirectory() as tmp:
    word = pathlib.Path(tmp) / "w.json"
    subprocess.run([cli, "transport", "--src", src, "--dst", dst, "-o", str(word)], check=True)
    data = word.read_bytes()
    base = subprocess.run([cli, "verify", "--word", str(word), "--src", src, "--dst", dst])
    if base.returncode != 0:
        sys.exit("untampered word file did not verify")
    flipped = pathlib.Path(tmp) / "f.json"
    accepted = []
    for i in range(len(data)):
        mutated = bytearray(data)
        mutated[i] ^= 1
        flipped.write_bytes(bytes(mutated))
        r = subprocess.run([cli, "verify", "--word", str(flipped), "--src", src, "--dst", dst],
                           capture_output=True)
        if r.returncode not in (1, 2):
            accepted.append(i)
    if accepted:
        sys.exit(f"flips accepted at byte offsets {accepted[:20]}")
    print(f"all {len(data)} single-byte flips rejected")
