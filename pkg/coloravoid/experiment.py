# -*- coding: UTF-8 -*-
"""
Module that contains the experiment class.

"""

import collections
import logging
import os

import openpyxl
import pandas

from coloravoid import construction
from coloravoid import sparsify
from coloravoid.math import approximation_ratio, min_edges_bound

logger = logging.getLogger(__name__)

# Header style of the sweep workbook
header_font = openpyxl.styles.Font(bold=True, color="FF1F497D")
header_alignment = openpyxl.styles.Alignment(wrapText=True,
                                             horizontal='center')

def default_sizes(family, k_values=(2, 3, 4, 5)):
    """
    Three valid ``(k, n)`` parameter pairs per number of colors.

    Parameters
    ----------
    family : str
        One of the tight-ratio families of `coloravoid.construction`.
    k_values : sequence of int, optional
        Numbers of colors. Values the family does not accept are skipped.

    Returns
    -------
    list of tuple

    """
    sizes = []
    for k in k_values:
        if family == 'eca_tight_ratio':
            if k < 3:
                continue
            sizes.extend((k, 1 + (k - 1)*t) for t in (1, 2, 3))
        elif family == 'vca_tight_ratio':
            min_n = 4 if k == 2 else max(k, 3)
            sizes.extend((k, min_n + 3*t) for t in (0, 1, 2))
        elif family == 'ivca_tight_ratio':
            sizes.extend((k, 4*k - 1 + (2*k - 2)*t) for t in (0, 1, 2))
        else:
            raise ValueError("family {} has no default sizes".format(family))
    return sizes

class Experiment(object):
    """
    Object that represents a sweep of the sparsifiers over generated
    graphs.

    Every family in `families` is generated for every parameter set in
    `sizes`, and the sparsifier of the family's notion is run under every
    order in `orders`. The output size is compared with the optimum
    certificate carried by the generated graph, with the closed-form
    lower bound, and with the approximation guarantee.

    Attributes
    ----------
    families : list of str
        Families of `coloravoid.construction.FAMILIES`. Families without
        an optimum certificate are rejected by `run`.
    sizes : OrderedDict
        Parameter tuples for each family, in the order of the family's
        parameter names. Families missing here use `default_sizes`.
    orders : list
        Edge orders. ``'adversarial'`` uses the orders shipped with each
        construction. Other values are passed to
        `coloravoid.graph.resolve_order`.

    """
    def __init__(self):
        self.families = ['eca_tight_ratio',
                         'vca_tight_ratio',
                         'ivca_tight_ratio']
        self.sizes = collections.OrderedDict()
        self.orders = ['adversarial', 'asc', 'random:0']

    def _run_one(self, built, order):
        notion = built.spec.expected_property
        kwargs = {}
        if order == 'adversarial':
            edge_order = built.edge_order
            if notion == 'ivca':
                kwargs['vertex_order'] = built.vertex_order
        else:
            edge_order = order
        return sparsify.sparsify(built.graph, notion, edge_order, **kwargs)

    def run(self):
        """
        Run the sweep.

        Returns
        -------
        pandas.DataFrame
            One row per family, parameter set and order, with columns
            ``Family``, ``k``, ``n``, ``Order``, ``Edges``, ``Optimum``,
            ``Bound``, ``Selected``, ``Ratio``, ``Guaranteed Ratio`` and
            ``Worst Case``. The latter is ``True`` when the output is as
            large as the construction's adversarial certificate.

        """
        rows = []
        for family in self.families:
            if family not in construction.FAMILIES:
                raise ValueError("family {} not recognized".format(family))
            sizes = self.sizes.get(family)
            if sizes is None:
                sizes = default_sizes(family)
            for params in sizes:
                built = construction.construct(family, *params)
                if 'optimum' not in built.certificates:
                    raise ValueError("family {} has no optimum "
                                     "certificate".format(family))
                notion = built.spec.expected_property
                g = built.graph
                k = len(g.colors_used)
                optimum = len(built.certificates['optimum'])
                adversarial = built.spec.expected_certificates.get(
                    'adversarial')
                for order in self.orders:
                    if order == 'adversarial' and built.edge_order is None:
                        continue
                    result = self._run_one(built, order)
                    logger.info("%s %s, order %s: %d of %d edges",
                                family, tuple(params), order, len(result),
                                g.m)
                    rows.append(collections.OrderedDict([
                        ('Family', family),
                        ('k', k),
                        ('n', g.n),
                        ('Order', str(order)),
                        ('Edges', g.m),
                        ('Optimum', optimum),
                        ('Bound', min_edges_bound(notion, k, g.n)),
                        ('Selected', len(result)),
                        ('Ratio', float(len(result))/optimum),
                        ('Guaranteed Ratio',
                            float(approximation_ratio(notion, k))),
                        ('Worst Case', adversarial is not None and \
                            len(result) == adversarial),
                    ]))
        columns = ['Family', 'k', 'n', 'Order', 'Edges', 'Optimum', 'Bound',
                   'Selected', 'Ratio', 'Guaranteed Ratio', 'Worst Case']
        return pandas.DataFrame(rows, columns=columns)

    @staticmethod
    def summarize(runs):
        """
        Summarize a table returned by `run` per family and order.

        """
        grouped = runs.groupby(['Family', 'Order'], sort=False)
        summary = pandas.DataFrame({
            'Runs': grouped.size(),
            'Max Ratio': grouped['Ratio'].max(),
            'Max Guaranteed Ratio': grouped['Guaranteed Ratio'].max(),
            'Worst Cases': grouped['Worst Case'].sum().astype(int),
        })
        return summary.reset_index()

    def save(self, file_name, runs=None):
        """
        Run the sweep and save it to an Excel workbook.

        The workbook contains sheets "Summary" and "Runs".

        Parameters
        ----------
        file_name : str
            Name of the xlsx file to create.
        runs : pandas.DataFrame, optional
            Result of a previous call to `run`. If not specified, the
            sweep is run.

        Returns
        -------
        pandas.DataFrame
            Table of runs.

        """
        if os.path.exists(file_name):
            raise IOError("file {} already exists".format(file_name))
        if runs is None:
            runs = self.run()
        summary = self.summarize(runs)
        with pandas.ExcelWriter(file_name, engine='openpyxl') as writer:
            summary.to_excel(writer, sheet_name='Summary', index=False)
            runs.to_excel(writer, sheet_name='Runs', index=False)
            # Apply header styles
            for worksheet in writer.sheets.values():
                for cell in worksheet[1]:
                    cell.font = header_font
                    cell.alignment = header_alignment
        return runs
