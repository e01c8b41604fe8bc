#!/usr/bin/env python3
"""Independent reference for hash_to_scalar.

expand_message_xmd (SHA-256, 48 output bytes) with the protocol tag as DST,
read as a big-endian integer and reduced mod q; zero maps to one.
Used to produce the frozen vectors in algebra_test.cc.
"""
import hashlib
import sys

Q = 0x73EDA753299D7D483339D80809A1D80553BDA402FFFE5BFEFFFFFFFF00000001


def expand_message_xmd(msg: bytes, dst: bytes, length: int) -> bytes:
    b_in_bytes, r_in_bytes = 32, 64
    ell = (length + b_in_bytes - 1) // b_in_bytes
    assert ell <= 255 and len(dst) <= 255
    dst_prime = dst + bytes([len(dst)])
    z_pad = bytes(r_in_bytes)
    l_i_b_str = length.to_bytes(2, "big")
    b0 = hashlib.sha256(z_pad + msg + l_i_b_str + b"\x00" + dst_prime).digest()
    b = [hashlib.sha256(b0 + b"\x01" + dst_prime).digest()]
    for i in range(2, ell + 1):
        prev = bytes(x ^ y for x, y in zip(b0, b[-1]))
        b.append(hashlib.sha256(prev + bytes([i]) + dst_prime).digest())
    return b"".join(b)[:length]


def hash_to_scalar(tag: str, msg: bytes) -> int:
    v = int.from_bytes(expand_message_xmd(msg, tag.encode(), 48), "big") % Q
    return v or 1


if __name__ == "__main__":
    for tag in ("PRS:H1:chal", "PRS:H1:glue"):
        for msg in (b"", b"abc", bytes(range(64))):
            print(tag, msg.hex() or "-", format(hash_to_scalar(tag, msg), "064x"))
    # RFC 9380 K.1 sanity check of expand_message_xmd itself.
    dst = b"QUUX-V01-CS02-with-expander-SHA256-128"
    got = expand_message_xmd(b"", dst, 32).hex()
    assert got == "68a985b87eb6b46952128911f2a4412bbc302a9d759667f87f7a21d803f07235", got
    sys.exit(0)
