from django.db import models
from django.utils.translation import gettext_lazy as _


class TimestampedModel(models.Model):
    created_at = models.DateTimeField(auto_now_add=True, verbose_name=_('Created At'))
    updated_at = models.DateTimeField(auto_now=True, verbose_name=_('Updated At'))

    class Meta:
        abstract = True


class CensusRecord(TimestampedModel):
    """One archived classification of a parameter quadruple."""
    v = models.PositiveIntegerField(verbose_name=_('Vertices'))
    k = models.PositiveIntegerField(verbose_name=_('Valency'))
    lam = models.PositiveIntegerField(verbose_name=_('Lambda'))
    mu = models.PositiveIntegerField(verbose_name=_('Mu'))
    kind = models.CharField(max_length=40, verbose_name=_('Verdict'))
    reason = models.CharField(max_length=200, blank=True, default='', verbose_name=_('Reason'))
    m = models.PositiveIntegerField(null=True, blank=True, verbose_name=_('Smallest eigenvalue magnitude'))
    neumaier_bound = models.CharField(max_length=40, blank=True, default='', verbose_name=_('Neumaier bound'))
    improved_bound = models.CharField(max_length=40, blank=True, default='', verbose_name=_('Improved bound'))
    classical = models.CharField(max_length=100, blank=True, default='', verbose_name=_('Classical parameters'))
    pg = models.CharField(max_length=60, blank=True, default='', verbose_name=_('Partial geometry'))
    report = models.JSONField(default=dict, verbose_name=_('Report'))

    class Meta:
        verbose_name = _('Census Record')
        verbose_name_plural = _('Census Records')
        unique_together = ('v', 'k', 'lam', 'mu')
        ordering = ('v', 'k', 'lam', 'mu')

    def __str__(self):
        return f"({self.v}, {self.k}, {self.lam}, {self.mu}) {self.kind}"
