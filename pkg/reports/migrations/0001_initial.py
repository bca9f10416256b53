# Generated by Django 5.2 on 2026-10-18 09:12

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='CensusRecord',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('created_at', models.DateTimeField(auto_now_add=True, verbose_name='Created At')),
                ('updated_at', models.DateTimeField(auto_now=True, verbose_name='Updated At')),
                ('v', models.PositiveIntegerField(verbose_name='Vertices')),
                ('k', models.PositiveIntegerField(verbose_name='Valency')),
                ('lam', models.PositiveIntegerField(verbose_name='Lambda')),
                ('mu', models.PositiveIntegerField(verbose_name='Mu')),
                ('kind', models.CharField(max_length=40, verbose_name='Verdict')),
                ('reason', models.CharField(blank=True, default='', max_length=200, verbose_name='Reason')),
                ('m', models.PositiveIntegerField(blank=True, null=True, verbose_name='Smallest eigenvalue magnitude')),
                ('neumaier_bound', models.CharField(blank=True, default='', max_length=40, verbose_name='Neumaier bound')),
                ('improved_bound', models.CharField(blank=True, default='', max_length=40, verbose_name='Improved bound')),
                ('classical', models.CharField(blank=True, default='', max_length=100, verbose_name='Classical parameters')),
                ('pg', models.CharField(blank=True, default='', max_length=60, verbose_name='Partial geometry')),
                ('report', models.JSONField(default=dict, verbose_name='Report')),
            ],
            options={
                'verbose_name': 'Census Record',
                'verbose_name_plural': 'Census Records',
                'ordering': ('v', 'k', 'lam', 'mu'),
                'unique_together': {('v', 'k', 'lam', 'mu')},
            },
        ),
    ]
