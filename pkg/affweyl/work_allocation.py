#!/usr/bin/env python3
"""
Splitting a verification sweep into contiguous chunks for worker processes.
Chunks are cost-weighted so that long elements do not pile up on one worker,
and contiguous so that merging chunk results in order reproduces the serial
order of cases.
"""

import sys
from typing import List, Sequence, Tuple

Chunk = Tuple[int, int]   # [start, end) into the case list

CHUNKS_PER_JOB = 4


def calculate_chunk_allocation(costs: Sequence[int], jobs: int) -> List[Chunk]:
    """
    Calculate contiguous chunks of roughly equal total cost.

    Args:
        costs: Estimated cost of every case, in sweep order
        jobs: Number of worker processes

    Returns:
        List of [start, end) ranges covering every case exactly once
    """
    n = len(costs)
    if n == 0:
        return []
    chunk_count = max(1, min(n, jobs * CHUNKS_PER_JOB if jobs > 1 else 1))

    # Every case costs at least 1 so that zero-cost cases still spread out
    weights = [max(1, c) for c in costs]
    total = sum(weights)

    chunks = []
    start = 0
    accumulated = 0
    for k in range(1, chunk_count):
        target = total * k // chunk_count
        end = start
        while end < n - (chunk_count - k) and accumulated + weights[end] <= target:
            accumulated += weights[end]
            end += 1
        # Minimum 1 case per chunk
        if end == start:
            accumulated += weights[end]
            end += 1
        chunks.append((start, end))
        start = end
    chunks.append((start, n))
    return chunks


def validate_chunk_allocation(chunks: Sequence[Chunk], case_count: int) -> bool:
    """
    Validate that chunks tile the case list.

    Args:
        chunks: Allocation from calculate_chunk_allocation
        case_count: Number of cases in the sweep

    Returns:
        True if every case lies in exactly one non-empty chunk, False otherwise
    """
    expected = 0
    for start, end in chunks:
        if start != expected:
            print(f"❌ Chunk [{start}, {end}) does not start at {expected}", file=sys.stderr)
            return False
        if end <= start:
            print(f"❌ Chunk [{start}, {end}) is empty", file=sys.stderr)
            return False
        expected = end
    if expected != case_count:
        print(f"❌ Chunks cover {expected} cases, expected {case_count}", file=sys.stderr)
        return False
    return True


def print_allocation_summary(chunks: Sequence[Chunk], costs: Sequence[int], jobs: int,
                             max_display: int = 8) -> None:
    """
    Print a summary of the chunk allocation.

    Args:
        chunks: Allocation from calculate_chunk_allocation
        costs: Estimated cost of every case
        jobs: Number of worker processes
        max_display: Maximum number of chunks to display
    """
    print(f"📊 Split {len(costs)} cases into {len(chunks)} chunks for {jobs} workers", file=sys.stderr)
    for start, end in chunks[:max_display]:
        print(f"   Cases {start}-{end - 1}: cost {sum(costs[start:end])}", file=sys.stderr)
    if len(chunks) > max_display:
        print(f"   ... and {len(chunks) - max_display} more chunks", file=sys.stderr)
