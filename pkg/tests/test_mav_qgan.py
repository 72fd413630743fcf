def test_version():
    from mav_qgan import version

    assert version != '0.0.0'
