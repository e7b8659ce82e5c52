"""
Pictures of hook partitions, decompositions and root multiplicities.

Documentation and examples are available at <https://gradedlie.readthedocs.io>
"""

import numpy as np
import matplotlib.pyplot as plt

__all__ = ('cell_polygon',
           'draw_young_diagram',
           'plot_hook_decomposition',
           'plot_supertrace_table',
           'plot_root_grid',
           )


def cell_polygon(row, col, size=1):
    """
    Create a polygon for one box of a Young diagram.

    Rows grow downward (English convention), so row r occupies
    -r-1 <= y <= -r.

    Args:
        row: row of the box, starting at 0
        col: column of the box, starting at 0
        size: side of the box

    Returns:
        x, y: coordinates of the closed square
    """
    x = np.array([0, 1, 1, 0, 0]) * size + col * size
    y = -np.array([0, 0, 1, 1, 0]) * size - row * size
    return x, y


def draw_young_diagram(lam, k=None, l=None):
    """
    Draw the Young diagram of a partition.

    When k and l are given the boxes in the first k rows and in the first l
    columns (the (k,l)-hook) are shaded, the first in blue and the rest in
    green.

    Args:
        lam: Partition
        k: rows of the even part of the hook
        l: columns of the odd part of the hook

    Returns:
        fig: matplotlib Figure object representing the plot
        ax: matplotlib Axes object representing the plot
    """
    fig, ax = plt.subplots(figsize=(5, 5))
    for row, col in lam.cells():
        color = 'white'
        if k is not None and row < k:
            color = 'lightblue'
        elif l is not None and col < l:
            color = 'lightgreen'
        x, y = cell_polygon(row, col)
        plt.fill(x, y, color=color)
        plt.plot(x, y, color='black', linewidth=1)

    # dashed lines mark the arms of the hook
    width = max(lam[0], 1)
    height = max(lam.length, 1)
    if k is not None:
        plt.plot([0, width + 1], [-k, -k], ls='--', color='blue', linewidth=1)
    if l is not None:
        plt.plot([l, l], [0, -height - 1], ls='--', color='green', linewidth=1)

    plt.xlim(-0.5, width + 1.5)
    plt.ylim(-height - 1.5, 0.5)
    plt.gca().set_aspect('equal')
    plt.axis('off')
    title = str(lam)
    if k is not None and l is not None:
        title += ' in H(%d,%d;%d)' % (k, l, lam.size)
    plt.title(title)
    return fig, ax


def plot_hook_decomposition(decomposition):
    """
    Bar chart of the multiplicities c_λ of a HookDecomposition.

    Args:
        decomposition: gl_decomp.HookDecomposition

    Returns:
        fig: matplotlib Figure object representing the plot
        ax: matplotlib Axes object representing the plot
    """
    fig, ax = plt.subplots(figsize=(10, 5))
    labels = [str(lam) for lam in decomposition.entries]
    values = [decomposition.entries[lam] for lam in decomposition.entries]
    positions = np.arange(len(labels))
    plt.bar(positions, values, color='blue')
    plt.xticks(positions, labels, rotation=90)
    plt.xlabel('hook partition λ')
    plt.ylabel('multiplicity $c_λ$')
    plt.title('gl(%d,%d) decomposition in degree %d (dimension %d)'
              % (decomposition.k, decomposition.l, decomposition.n, decomposition.dimension()))
    return fig, ax


def plot_supertrace_table(values, title=None):
    """
    Heat map of a table of supertraces indexed by (m, n).

    The color is log10(1 + |value|) so that the rapid growth of root
    multiplicities stays visible; the signed value is written in each box.

    Args:
        values: mapping (m, n) -> number
        title: optional plot title

    Returns:
        fig: matplotlib Figure object representing the plot
        ax: matplotlib Axes object representing the plot
    """
    fig, ax = plt.subplots(figsize=(6, 6))
    if not values:
        return fig, ax
    rows = max(m for m, _ in values) + 1
    cols = max(n for _, n in values) + 1
    grid = np.ma.masked_all((rows, cols))
    for (m, n), v in values.items():
        grid[m, n] = np.log10(1 + abs(float(v)))
        plt.text(n, m, str(v), ha='center', va='center', fontsize=6, color='white')
    plt.imshow(grid, origin='lower', cmap='viridis')
    plt.colorbar(label='log10(1 + |str|)')
    plt.xlabel('n')
    plt.ylabel('m')
    if title:
        plt.title(title)
    return fig, ax


def plot_root_grid(multiplicities, title=None):
    """
    Scatter plot of root superdimensions in a rank-two lattice.

    Marker area grows with |sdim|; positive values are blue and negative
    values red.

    Args:
        multiplicities: mapping (a, b) -> superdimension
        title: optional plot title

    Returns:
        fig: matplotlib Figure object representing the plot
        ax: matplotlib Axes object representing the plot
    """
    fig, ax = plt.subplots(figsize=(6, 6))
    for (a, b), v in multiplicities.items():
        v = float(v)
        if v == 0:
            continue
        color = 'blue' if v > 0 else 'red'
        plt.scatter(a, b, s=20 * (1 + np.log10(abs(v))) ** 2, color=color)

    plt.axhline(0, color='black', linewidth=0.5)
    plt.axvline(0, color='black', linewidth=0.5)
    plt.gca().set_aspect('equal')
    plt.xlabel('first coordinate')
    plt.ylabel('second coordinate')
    if title:
        plt.title(title)
    return fig, ax
